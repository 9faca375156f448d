"""Compare the compiled and pure-Python arithmetic kernels.

Each workload runs in a fresh subprocess with DUALTOEPLITZ_BACKEND pinned, so
the numbers reflect exactly one kernel with no cross-imports.  Timings are
best-of-``--repeat`` wall-clock seconds measured inside the child process
(interpreter startup excluded).

Usage:  python3 benchmarks/bench_backends.py [--repeat 3]
"""

import argparse
import os
import subprocess
import sys

CHILD_TEMPLATE = """
import time

from dualtoeplitz import BACKEND_NAME

assert BACKEND_NAME == {backend!r}, f"wanted {backend!r}, got {{BACKEND_NAME}}"

def workload():
{body}

best = min(
    (lambda start=time.perf_counter(): (workload(), time.perf_counter() - start)[1])()
    for _ in range({repeat})
)
print(f"{{best:.6f}}")
"""

WORKLOADS = {
    "selfcomm matrix + PSD witness (N=8)": """
    from dualtoeplitz import HermitianForm, parse_symbol, psd_test, selfcomm_form_matrix
    a = selfcomm_form_matrix(parse_symbol("z^2 zb"), 8)
    assert not psd_test(HermitianForm(a)).is_psd
""",
    "classification sweep with certificates": """
    from dualtoeplitz import classify_with_certificate, parse_symbol
    for text in ("z zb + z^2 zb^2", "z^2 zb + z zb^2", "2 z + 3 zb", "z^2 zb + z^3"):
        classify_with_certificate(parse_symbol(text), 6)
""",
    "commutator matrix + rank (N=5)": """
    from dualtoeplitz import commutator_matrix, parse_symbol, rank
    b = commutator_matrix(parse_symbol("z^2 zb"), parse_symbol("z zb^2"), 5)
    assert rank(b) == 14
""",
    "full verification suite": """
    from dualtoeplitz import run_suites
    assert all(rep.passed for rep in run_suites("all"))
""",
}


def run_child(backend: str, body: str, repeat: int) -> float:
    indented = "\n".join(
        "    " + line if line.strip() else line for line in body.strip("\n").splitlines()
    )
    code = CHILD_TEMPLATE.format(backend=backend, body=indented, repeat=repeat)
    env = dict(os.environ, DUALTOEPLITZ_BACKEND=backend)
    proc = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True
    )
    if proc.returncode != 0:
        raise RuntimeError(f"{backend} child failed:\n{proc.stderr}")
    return float(proc.stdout.strip())


def backend_available(backend: str) -> bool:
    env = dict(os.environ, DUALTOEPLITZ_BACKEND=backend)
    probe = subprocess.run(
        [sys.executable, "-c", "import dualtoeplitz"],
        env=env,
        capture_output=True,
    )
    return probe.returncode == 0


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3, help="runs per timing (best kept)")
    args = parser.parse_args()

    backends = [b for b in ("python", "compiled") if backend_available(b)]
    if "compiled" not in backends:
        print("note: compiled backend unavailable; timing pure Python only\n")

    width = max(len(name) for name in WORKLOADS)
    header = f"{'workload'.ljust(width)}  " + "".join(f"{b:>12}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for name, body in WORKLOADS.items():
        times = [run_child(backend, body, args.repeat) for backend in backends]
        row = name.ljust(width) + "  " + "".join(f"{t:>11.4f}s" for t in times)
        if len(times) == 2 and times[1] > 0:
            row += f"{times[0] / times[1]:>9.2f}x"
        print(row)
    return 0


if __name__ == "__main__":
    sys.exit(main())
