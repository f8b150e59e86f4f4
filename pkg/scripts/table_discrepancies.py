"""Compare the printed operator columns and alpha rules with what the weights imply."""

from qes import catalog


def main():
    for entry in catalog.ENTRIES:
        print(catalog.table_selfcheck(entry.id, trials=5).summary())
    print()
    for entry in catalog.table_entries(4):
        res = catalog.printed_alpha_identity(entry.id, points=10)
        bad = sum(r["residual"] != 0 for r in res)
        print(f"{entry.id}: printed alpha rule {'holds' if not bad else f'fails at {bad}/10 points'}")


if __name__ == "__main__":
    main()
