"""Acceptance suite: every criterion prints one pass/fail line.

Criteria 4 and 5 double as the statistics source for the indicator-set
width diagnostics reported by criterion 8.
"""

import logging
import os
import random
import time
from pathlib import Path

import pytest

from primecover import (
    BitVec,
    Cube,
    all_primes,
    coverage_mask,
    cube_text,
    derive_rc,
    direct_cover,
    edsa_minimize,
    generate_di,
    generate_sdm,
    generate_spi,
    minimize_sr,
    minimum_cover_size,
    neighbors,
    parse_pla,
    reduce_off_cube,
    subfunction_off,
    text_cube,
    verify_cover,
    write_pla,
)
from primecover.oracle import primes_containing
from helpers import (
    FIVE_VAR_OFF,
    TRI_OUTPUT_COVER,
    WidthCollector,
    bv,
    random_cube,
    random_function,
    record_acceptance,
    tri_output_function,
)

collector = WidthCollector()


@pytest.fixture(scope="module", autouse=True)
def _collect_di_widths():
    logger = logging.getLogger("primecover.reduced_offset")
    previous_level = logger.level
    logger.setLevel(logging.DEBUG)
    logger.addHandler(collector)
    yield
    logger.removeHandler(collector)
    logger.setLevel(previous_level)


def test_criterion_1_golden_five_var_trace():
    P = bv("11010")
    off = [bv(t) for t in FIVE_VAR_OFF]
    started = time.perf_counter()
    sdm = generate_sdm(P, off)
    pis = generate_spi(P, off)
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    ok = (
        sdm.as_set() == {bv("10000"), bv("01100"), bv("00001"), bv("00110")}
        and sdm.comparisons == 29
        and f"{sdm.comparisons / len(off):.2f}" == "1.81"
        and [cube_text(c) for c in pis] == ["11x10", "1x0x0"]
        and elapsed_ms < 10.0
    )
    record_acceptance(
        1,
        ok,
        f"di set w=4, comparisons=29, avg=1.81, primes 11x10/1x0x0, {elapsed_ms:.2f} ms",
    )


def test_criterion_2_golden_three_var_both_paths():
    P = bv("001")
    off = [bv("000"), bv("100"), bv("111")]
    started = time.perf_counter()
    reference = minimize_sr([reduce_off_cube(P, z) for z in off])
    sdm = generate_sdm(P, off)
    via_indicators = {derive_rc(P, d) for d in sdm}
    pis = generate_spi(P, off)
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    ok = (
        {cube_text(c) for c in reference} == {"xx0", "11x"}
        and via_indicators == set(reference)
        and [cube_text(c) for c in pis] == ["0x1", "x01"]
        and elapsed_ms < 10.0
    )
    record_acceptance(
        2, ok, f"reference path xx0/11x agrees with indicators, primes 0x1/x01, {elapsed_ms:.2f} ms"
    )


def test_criterion_3_golden_tri_output():
    f = tri_output_function()
    checks = []

    cover = edsa_minimize(f)
    checks.append({(cube_text(tc.cube), tc.tag) for tc in cover} == TRI_OUTPUT_COVER)
    checks.append(len(cover) == 5)

    off_y0 = subfunction_off(frozenset({0}), f)
    checks.append(
        [generate_di(bv("100"), z) for z in sorted(off_y0, key=cube_text)]
        == [bv("101"), bv("110"), bv("111"), bv("010")]
    )
    checks.append(generate_sdm(bv("100"), off_y0).as_set() == {bv("101"), bv("010")})
    checks.append(
        {cube_text(c) for c in generate_spi(bv("100"), off_y0)} == {"10x", "x00"}
    )

    off_y20 = subfunction_off(frozenset({2, 0}), f)
    checks.append({cube_text(c) for c in off_y20} == {"001", "010", "011", "100", "110"})
    checks.append(
        [generate_di(bv("000"), z) for z in off_y20]
        == [bv("001"), bv("010"), bv("011"), bv("100"), bv("110")]
    )
    checks.append(
        [generate_di(bv("101"), z) for z in off_y20]
        == [bv("100"), bv("111"), bv("110"), bv("001"), bv("011")]
    )
    checks.append(
        generate_sdm(bv("000"), off_y20).as_set() == {bv("001"), bv("010"), bv("100")}
    )
    checks.append(generate_sdm(bv("101"), off_y20).as_set() == {bv("001"), bv("100")})
    checks.append([cube_text(c) for c in generate_spi(bv("000"), off_y20)] == ["000"])
    checks.append([cube_text(c) for c in generate_spi(bv("101"), off_y20)] == ["1x1"])

    off_y2 = subfunction_off(frozenset({2}), f)
    checks.append({cube_text(c) for c in off_y2} == {"011", "100"})
    checks.append(generate_sdm(bv("000"), off_y2).as_set() == {bv("011"), bv("100")})
    checks.append(
        {cube_text(c) for c in generate_spi(bv("000"), off_y2)} == {"00x", "0x0"}
    )

    off_y21 = subfunction_off(frozenset({2, 1}), f)
    checks.append(
        {cube_text(c) for c in off_y21} == {"000", "011", "100", "101", "111"}
    )
    checks.append(
        [generate_di(bv("001"), z) for z in off_y21]
        == [bv("001"), bv("010"), bv("101"), bv("100"), bv("110")]
    )
    checks.append(
        [generate_di(bv("010"), z) for z in off_y21]
        == [bv("010"), bv("001"), bv("110"), bv("111"), bv("101")]
    )
    checks.append(
        generate_sdm(bv("001"), off_y21).as_set() == {bv("001"), bv("010"), bv("100")}
    )
    checks.append(generate_sdm(bv("010"), off_y21).as_set() == {bv("001"), bv("010")})
    checks.append([cube_text(c) for c in generate_spi(bv("001"), off_y21)] == ["001"])
    checks.append([cube_text(c) for c in generate_spi(bv("010"), off_y21)] == ["x10"])

    from primecover.cover import mask_members

    on_y0 = [bv("000"), bv("100"), bv("101"), bv("111")]
    m1 = coverage_mask(text_cube("10x"), on_y0)
    m2 = coverage_mask(text_cube("x00"), on_y0)
    checks.append({m.to_text() for m in mask_members(m1, on_y0)} == {"100", "101"})
    checks.append({m.to_text() for m in mask_members(m2, on_y0)} == {"000", "100"})
    n1 = neighbors(m1, m2)
    checks.append({m.to_text() for m in mask_members(n1, on_y0)} == {"000", "101"})

    on_y2 = [bv("000"), bv("001"), bv("010"), bv("110")]
    m1b = coverage_mask(text_cube("00x"), on_y2)
    m2b = coverage_mask(text_cube("0x0"), on_y2)
    checks.append({m.to_text() for m in mask_members(m1b, on_y2)} == {"000", "001"})
    checks.append({m.to_text() for m in mask_members(m2b, on_y2)} == {"000", "010"})
    n2 = neighbors(m1b, m2b)
    checks.append({m.to_text() for m in mask_members(n2, on_y2)} == {"001", "010"})

    record_acceptance(
        3,
        all(checks),
        f"5-cube tagged cover and {len(checks) - 2} intermediate sets match",
    )


def test_criterion_4_oracle_equivalence_suite():
    rng = random.Random(1004)
    started = time.perf_counter()
    functions = 0
    points = 0
    mismatches = 0
    while functions < 1000:
        n = rng.randint(3, 6)
        f = random_function(rng, n)
        functions += 1
        primes = all_primes(f)
        for c in f.on:
            P = next(c.minterms())
            got = set(generate_spi(P, f.off))
            want = primes_containing(primes, P)
            points += 1
            if got != want:
                mismatches += 1
    elapsed = time.perf_counter() - started
    ok = mismatches == 0 and elapsed < 60.0
    record_acceptance(
        4,
        ok,
        f"{functions} functions, {points} minterms, {mismatches} mismatches, {elapsed:.1f} s",
    )


def test_criterion_5_cover_validity_suite():
    rng = random.Random(1005)
    started = time.perf_counter()
    functions = 0
    violations = 0
    while functions < 500:
        n = rng.randint(4, 8)
        f = random_function(rng, n)
        functions += 1
        result = direct_cover(f)
        report = verify_cover(result, f)
        if not report.ok:
            violations += 1
            continue
        if len(result.cubes) > len(result.on_minterms):
            violations += 1
            continue
        if n <= 6 and minimum_cover_size(f) > len(result.cubes):
            violations += 1
    elapsed = time.perf_counter() - started
    ok = violations == 0
    record_acceptance(
        5, ok, f"{functions} functions, {violations} violations, {elapsed:.1f} s"
    )


def test_criterion_6_round_trip_invariants():
    rng = random.Random(1006)
    failures = 0
    checked = 0
    while checked < 10_000:
        n = rng.randint(2, 8)
        P = BitVec(n, rng.randrange(1 << n))
        Z = random_cube(rng, n)
        if Z.covers_value(P.value):
            continue
        if derive_rc(P, generate_di(P, Z)) != reduce_off_cube(P, Z):
            failures += 1
        checked += 1

    pla_failures = 0
    for _ in range(100):
        n = rng.randint(2, 10)
        cover = []
        seen = set()
        for _ in range(rng.randint(1, 8)):
            c = random_cube(rng, n)
            if cube_text(c) not in seen:
                seen.add(cube_text(c))
                cover.append(c)
        back = parse_pla(write_pla(cover, n))
        if list(back.on) != cover:
            pla_failures += 1
    ok = failures == 0 and pla_failures == 0
    record_acceptance(
        6,
        ok,
        f"10000 reduction round trips, 100 PLA round trips, {failures + pla_failures} failures",
    )


def _synthetic_off_cubes(rng: random.Random, n: int, count: int, P: BitVec) -> list[Cube]:
    out = []
    while len(out) < count:
        z = random_cube(rng, n, dc_prob=0.3)
        if not z.covers_value(P.value):
            out.append(z)
    return out


def test_criterion_7_performance_smoke():
    rng = random.Random(1007)
    n = 16
    P = BitVec(n, rng.randrange(1 << n))
    off = _synthetic_off_cubes(rng, n, 2000, P)
    started = time.perf_counter()
    pis = generate_spi(P, off)
    elapsed = time.perf_counter() - started
    ok = elapsed < 1.0 and len(pis) >= 1
    detail = f"n=16, 2000 off-cubes, {len(pis)} primes in {elapsed * 1000.0:.0f} ms"

    mcnc_dir = os.environ.get("MCNC_PLA_DIR")
    if mcnc_dir:
        expected = {"br11": 3, "den": 4, "min": 6, "max4": 6}
        for name, want in expected.items():
            path = Path(mcnc_dir) / f"{name}.pla"
            if not path.exists():
                detail += f"; {name}.pla missing"
                continue
            f = parse_pla(path.read_text(encoding="utf-8"), name=name)
            got = len(direct_cover(f).cubes)
            if abs(got - want) > 1:
                ok = False
            detail += f"; {name}: {got} cubes (target {want}±1)"
    else:
        detail += "; benchmark PLA files not supplied, count check skipped"
    record_acceptance(7, ok, detail)


def test_criterion_8_width_diagnostics():
    samples = collector.samples
    ok = len(samples) > 0
    histogram: dict[int, int] = {}
    over_bound = 0
    for n, width in samples:
        histogram[width] = histogram.get(width, 0) + 1
        if width > 2.5 * n:
            over_bound += 1
    worst = max((w for _, w in samples), default=0)
    print("indicator-set width histogram (width: count):")
    for width in sorted(histogram):
        print(f"  {width:3d}: {histogram[width]}")
    share = 100.0 * over_bound / len(samples) if samples else 0.0
    detail = (
        f"{len(samples)} folds, max width {worst}, "
        f"{share:.2f}% above the 2.5n heuristic bound (reported, not asserted)"
    )
    record_acceptance(8, ok, detail)
