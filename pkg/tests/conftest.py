def pytest_terminal_summary(terminalreporter):
    module = __import__("sys").modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(module.RESULTS):
        title, ok, detail = module.RESULTS[number]
        terminalreporter.write_line(module.format_line(number, title, ok, detail))
