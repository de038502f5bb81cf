def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when != "call":
                continue
            for key, value in getattr(rep, "user_properties", []):
                if key == "acceptance":
                    lines.append((value, "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for (number, text), verdict in sorted(lines):
            terminalreporter.write_line(f"[{verdict}] {number}. {text}")
