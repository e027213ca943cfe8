"""
Setup Verification Script
Quick pass over the bundled dataset and the series/operator pipeline
"""
import sys
from math import factorial


def check_dataset():
    """Bundled ground truth parses and its printed values are self-consistent"""
    from dataset import expectation_issues, load_ground_truth

    entries = load_ground_truth()
    if len(entries) != 166:
        return False, f"Expected 166 entries, found {len(entries)}"
    broken = [e.id for e in entries if expectation_issues(e)]
    if broken:
        return False, f"Inconsistent expectations: {', '.join(broken)}"
    repaired = sum(1 for e in entries if e.errata)
    return True, f"{len(entries)} polytopes, {repaired} with errata"


def check_series():
    """Phi_0 of V(1) against (4k)!/(k!)^4"""
    from dataset import load_ground_truth
    from gkz import phi0, relation_lattice

    (entry,) = load_ground_truth(ids=["V(1)"])
    series = phi0(relation_lattice(entry.polytope()), 12)
    expected = [factorial(4 * k) // factorial(k) ** 4 for k in range(4)]
    got = [series.coefficient(4 * k) for k in range(4)]
    if got != expected:
        return False, f"V(1) coefficients {got}, expected {expected}"
    return True, "Phi_0(V(1)) matches through t^12"


def check_quick_verify():
    """Recompute the Picard rank 1 entries"""
    from cli.verify import verify
    from dataset import load_ground_truth

    entries = [e for e in load_ground_truth() if e.type_label is not None]
    report = verify(entries)
    if report.failures:
        return False, f"Mismatches: {', '.join(r.id for r in report.failures)}"
    return True, f"{len(entries)}/{len(entries)} rank 1 entries verified"


def main():
    print("=" * 70)
    print("CONIFOLD TOOLKIT CHECK")
    print("=" * 70)

    checks = [
        ("Dataset", check_dataset),
        ("Series", check_series),
        ("Quick Verify", check_quick_verify),
    ]
    failed = 0
    for name, check in checks:
        print(f"Checking {name}...", end=" ", flush=True)
        try:
            ok, message = check()
        except Exception as e:
            ok, message = False, f"Error: {e}"
        print(f"[{'OK' if ok else 'FAIL'}] {message}")
        failed += not ok

    print("=" * 70)
    print(f"Results: {len(checks) - failed} passed, {failed} failed")
    return failed == 0


if __name__ == "__main__":
    sys.exit(0 if main() else 1)
