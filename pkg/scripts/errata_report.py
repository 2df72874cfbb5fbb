"""Print every printed table entry the brute-force trace refutes.

For each one: the printed value, the engine value, and how far each sits from
the direct trace at A = q^N (N = number of strands).

    python3 scripts/errata_report.py
"""

from homflychar.tables import load_fixtures, run_fixture


def main():
    n = 0
    for f in load_fixtures():
        rep = run_fixture(f)
        for x in rep.errata():
            n += 1
            print(f"{f.key}  {x.field}  (word {x.word})")
            print(f"    printed:  {x.expected}")
            print(f"    computed: {x.got}")
            print(f"    {x.note}")
        for x in rep.failures():
            print(f"UNEXPLAINED {f.key} {x.field}: printed {x.expected}, computed {x.got}")
    print(f"{n} printed entries refuted")


if __name__ == "__main__":
    main()
