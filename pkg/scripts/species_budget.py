#!/usr/bin/env python3
"""How many charged pairs does the vacuum response need at each gap ratio?

Prints the charge-weighted species counts for both volume conventions next
to the bundled standard-model budget, and the gap ratios at which the
bundled table would match the measured permittivity exactly.
"""

import argparse

from vacuumresponse.species import (
    SpeciesModel,
    charge_weighted_sum,
    default_species_table,
    gap_for_exact_match,
    required_species_count,
)


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--kappas", default="0.5,1,2,4", help="comma-separated gap ratios")
    args = ap.parse_args()

    table = default_species_table()
    budget = charge_weighted_sum(table)
    print(f"bundled charge-weighted budget: {budget} ({float(budget):g})")
    print(f"{'kappa':>8}  {'count_simple':>14}  {'count_sphere':>14}")
    for text in args.kappas.split(","):
        kappa = float(text)
        simple = required_species_count(kappa, SpeciesModel.SIMPLE)
        sphere = required_species_count(kappa, SpeciesModel.SPHERE)
        print(f"{kappa:>8g}  {simple:>14.4f}  {sphere:>14.4f}")
    for model in SpeciesModel:
        match = gap_for_exact_match(table, model)
        print(
            f"exact match, {model.value:>6} model: gap ratio {match.gap_ratio:.6f} "
            f"({match.gap_energy.magnitude:.4e} J for electron-scale pairs)"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
