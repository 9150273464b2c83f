import helpers


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not helpers.ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, detail in sorted(helpers.ACCEPTANCE_RESULTS):
        state = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"acceptance {number}: {state} ({detail})")
