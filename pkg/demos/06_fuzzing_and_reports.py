"""Seeded property fuzzing with replayable, byte-stable reports.

The fuzzer draws instances deterministically per (seed, suite), checks a
property family per suite, and serializes any violation as a scenario
payload ready for replay.  The exploratory suite is a counterexample
search for a genuinely open question and only archives findings; it
never gates anything.

Command-line equivalents:
    selgames fuzz --seed 42 --count 100 --json
    selgames fuzz --seed 1 --count 30 --suite open-question-gamma-two
    selgames corpus run
"""

from selgames import fuzz
from selgames.serialize import canonical_dumps

print("== a clean gated run")
report = fuzz(seed=42, count=30)
for name, result in report.results.items():
    print(f"  {name}: {result.instances} instances,"
          f" {len(result.violations)} violations,"
          f" {result.budget_exceeded} budget-exceeded")
print("total violations:", report.total_violations)

print("\n== identical seeds give identical bytes")
again = fuzz(seed=42, count=30)
print("byte-identical:",
      canonical_dumps(report.to_json()) == canonical_dumps(again.to_json()))

print("\n== the exploratory suite archives, never gates")
explore = fuzz(seed=1, count=40, suites=("open-question-gamma-two",))
result = explore.results["open-question-gamma-two"]
print(f"{result.instances} instances, {len(result.findings)} findings archived")
for finding in result.findings[:4]:
    print("  ", finding)
print("(window-game and plain-game values diverge for Two on these")
print(" singleton instances; the suite records where, and claims nothing)")
