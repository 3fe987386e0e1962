"""Golden CLI cases: (name, problem file, argv after the command, expected exit code)."""
from pathlib import Path

FIXTURES = Path(__file__).parent / "fixtures"
PROBLEMS = FIXTURES / "problems"
GOLDEN = FIXTURES / "golden"

CASES = [
    ("x_squared-newton", "x_squared", ["newton"], 0),
    ("x_squared-mmi", "x_squared", ["mmi", "--lambda", "1/2"], 0),
    ("x_squared-walls", "x_squared", ["walls", "--box", "1"], 0),
    ("x_squared-jump", "x_squared", ["jump", "--lambda", "1/2"], 0),
    ("x_squared-region", "x_squared", ["region", "--lambda", "1/2", "--box", "1"], 0),
    ("x_squared-ray", "x_squared", ["ray", "--alpha", "1", "--max", "1"], 0),
    ("x_squared-bsideal", "x_squared", ["bsideal"], 0),
    ("x_squared-verify-main", "x_squared", ["verify-main"], 0),
    ("x_squared-independence", "x_squared", ["independence", "--extra", "x1^3", "--certificate", "x1"], 0),
    ("x_and_xy-newton", "x_and_xy", ["newton"], 0),
    ("x_and_xy-mmi", "x_and_xy", ["mmi", "--lambda", "1/2,1/2"], 0),
    ("x_and_xy-walls", "x_and_xy", ["walls", "--box", "1"], 0),
    ("x_and_xy-jump", "x_and_xy", ["jump", "--lambda", "1/2,1/2"], 0),
    ("x_and_xy-region", "x_and_xy", ["region", "--lambda", "3/4,1/2", "--box", "1"], 0),
    ("x_and_xy-ray", "x_and_xy", ["ray", "--alpha", "1,1", "--max", "1"], 0),
    ("x_and_xy-bsideal", "x_and_xy", ["bsideal"], 0),
    ("x_and_xy-verify-main", "x_and_xy", ["verify-main", "--samples", "5"], 0),
    ("x_and_xy-independence", "x_and_xy",
     ["independence", "--ideal", "2", "--extra", "x1^2*x2 - 2*x1*x2^2", "--certificate", "x1 - 2*x2"], 0),
    ("maximal_and_xy-newton", "maximal_and_xy", ["newton"], 0),
    ("maximal_and_xy-mmi", "maximal_and_xy", ["mmi", "--lambda", "1,1/2"], 0),
    ("maximal_and_xy-walls", "maximal_and_xy", ["walls", "--box", "1"], 0),
    ("maximal_and_xy-jump", "maximal_and_xy", ["jump", "--lambda", "1,1/2"], 0),
    ("maximal_and_xy-region", "maximal_and_xy", ["region", "--lambda", "1/2,1/2", "--box", "1"], 0),
    ("maximal_and_xy-ray", "maximal_and_xy", ["ray", "--alpha", "1,2", "--max", "1"], 0),
    ("maximal_and_xy-bsideal", "maximal_and_xy", ["bsideal"], 2),
    ("maximal_and_xy-verify-main", "maximal_and_xy", ["verify-main"], 2),
    ("maximal_and_xy-independence", "maximal_and_xy",
     ["independence", "--extra", "x1^2 + 5*x2", "--certificate", "x1,5,0"], 0),
    ("valuation-newton", "valuation", ["newton"], 0),
    ("valuation-mmi", "valuation", ["mmi", "--lambda", "3"], 0),
    ("valuation-walls", "valuation", ["walls", "--box", "3"], 0),
    ("valuation-jump", "valuation", ["jump", "--lambda", "2"], 0),
    ("valuation-bsideal", "valuation", ["bsideal"], 2),
    ("error-lambda-length", "x_and_xy", ["mmi", "--lambda", "1/2"], 1),
    ("error-zero-denominator", "x_squared", ["mmi", "--lambda", "1/0"], 1),
    ("error-bad-certificate", "x_and_xy", ["independence", "--extra", "x1^2", "--certificate", "x2"], 1),
    ("error-plot-dimension", "x_squared", ["walls", "--plot", "PLOT"], 2),
]

PLOT_CASES = [
    ("x_and_xy-walls-plot", "x_and_xy", ["walls", "--box", "1"]),
    ("x_and_xy-ray-plot", "x_and_xy", ["ray", "--alpha", "1,1", "--max", "1"]),
    ("x_and_xy-verify-plot", "x_and_xy", ["verify-main"]),
    ("maximal_and_xy-region-plot", "maximal_and_xy", ["region", "--lambda", "1/2,1/2", "--box", "1"]),
]


def run(problem: str, argv: list[str], plot_path=None) -> tuple[int, str]:
    import io

    from mmibs.cli import main

    argv = [a if a != "PLOT" else str(plot_path) for a in argv]
    if plot_path is not None and "--plot" not in argv:
        argv = argv + ["--plot", str(plot_path)]
    out = io.StringIO()
    code = main([argv[0], str(PROBLEMS / f"{problem}.json")] + argv[1:], stdout=out)
    return code, out.getvalue()


def regenerate(tmp):
    for name, problem, argv, _ in CASES:
        code, out = run(problem, argv, Path(tmp) / "p.svg" if "PLOT" in argv else None)
        (GOLDEN / f"{name}.out").write_text(f"exit {code}\n{out}", encoding="utf-8")
    for name, problem, argv in PLOT_CASES:
        path = GOLDEN / f"{name}.svg"
        run(problem, argv, path)


if __name__ == "__main__":
    import tempfile

    with tempfile.TemporaryDirectory() as tmp:
        regenerate(tmp)
