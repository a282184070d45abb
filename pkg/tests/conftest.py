import sys


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(results, key=lambda s: int(s.split()[1])):
        terminalreporter.write_line(f"{k}: {results[k]}")
