#!/usr/bin/env python3
"""Scan a rational grid of family coefficients and tabulate the records.

Walks coefficient vectors (c1, c3, c5, c7) over a small nonnegative grid,
classifies each admissible one, and prints how often each classification
row occurs, confirming that the record depends only on the support.
"""

import argparse
import itertools
from collections import Counter
from fractions import Fraction

from celestial import forms


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-height", type=int, default=3)
    args = parser.parse_args()

    values = [Fraction(k) for k in range(args.max_height + 1)]
    counts: Counter[str] = Counter()
    rows = {}
    scanned = 0
    for vec in itertools.product(values, repeat=4):
        if not any(vec) or sum(1 for v in vec if not v) > 2:
            continue
        record = forms.classify_family(forms.FamilyCoeffs(*vec))
        counts[record.name] += 1
        rows[record.name] = record
        scanned += 1

    print(f"scanned {scanned} admissible coefficient vectors")
    for name, count in counts.most_common():
        r = rows[name]
        lam = "inf" if r.circles == forms.INFINITY else int(r.circles)
        print(
            f"{count:>5} x {name:<22} type ({lam},{r.degree},{r.ambient})  "
            f"moduli dim {r.moduli_dim}  singular [{r.singular_locus or '-'}]"
        )


if __name__ == "__main__":
    main()
