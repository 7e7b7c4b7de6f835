from lcinv import GF2Matrix, Stabilizer, graph_state

ACCEPTANCE_LINES: list[str] = []


def ghz3():
    return Stabilizer.from_paulis(["XXX", "ZZI", "IZZ"])


def triangle3():
    return graph_state(GF2Matrix.from_rows(["011", "101", "110"]))


def path3():
    return graph_state(GF2Matrix.from_rows(["010", "101", "010"]))


def product3():
    return Stabilizer.from_paulis(["ZII", "IZI", "IIZ"])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
