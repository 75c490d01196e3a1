#!/usr/bin/env python3
"""Print the classical and a sample Apostol family side by side.

A quick eyeball check of the engine: the Bernoulli, Euler and Genocchi
columns should match any table in the literature, and the Apostol-Bernoulli
column shows how the head of the family collapses once the base parameter
moves off 1.
"""

import argparse

from umbralcalc.apostol import (
    apostol_bernoulli,
    classical_bernoulli,
    classical_euler,
    classical_genocchi,
    preset_polynomials,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=8)
    parser.add_argument("--beta", default="2", help="base of the Apostol column")
    args = parser.parse_args()

    from umbralcalc.polynomial import parse_rational

    presets = [
        classical_bernoulli(),
        classical_euler(),
        classical_genocchi(),
        apostol_bernoulli(parse_rational(args.beta)),
    ]
    tables = [preset_polynomials(p, args.n_max) for p in presets]
    for preset, table in zip(presets, tables):
        label = preset.name
        if preset.name.startswith("apostol"):
            label += f"(beta={args.beta})"
        print(label)
        for n, poly in enumerate(table):
            print(f"  {n:2d}  {poly}")
        print()


if __name__ == "__main__":
    main()
