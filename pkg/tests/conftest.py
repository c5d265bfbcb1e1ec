def pytest_terminal_summary(terminalreporter):
    from test_acceptance import CRITERIA, RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, _, limit, _ in CRITERIA:
        if number not in RESULTS:
            terminalreporter.write_line(f"[{number:2d}] {name}: not run")
            continue
        _, ok, elapsed, limit, checks, failed = RESULTS[number]
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(
            f"[{number:2d}] {status} {name}: {checks - failed}/{checks} checks, "
            f"{elapsed:.1f}s (limit {limit}s)")
