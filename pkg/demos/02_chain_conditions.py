"""Chains, smallest-block families, and the four chain conditions.

Run:  python3 demos/02_chain_conditions.py
"""

from __future__ import annotations

from ncpverify.chains import (
    Chain,
    cond_i,
    cond_ii,
    cond_iii_bruteforce,
    cond_iii_criterion,
    dual_chain,
    smallest_blocks,
)
from ncpverify.core import elements_of


def show(text: str) -> None:
    chain = Chain.from_text(7, text)
    fam = smallest_blocks(chain)
    print(f"chain {chain.text()!r} (ranks {chain.ranks()}), dual {dual_chain(chain).text()!r}")
    for i in range(1, 8):
        fi = set(elements_of(fam.block(i)))
        fip = set(elements_of(fam.prime(i)))
        print(f"  F_{i} = {sorted(fi)}   F_{i}' = {sorted(fip)}")
    print(f"  condition I  (corank set has two consecutive values): {cond_i(chain)}")
    print(f"  condition II (not every member a cyclic interval):    {cond_ii(chain)}")
    print(f"  condition III, four-member criterion: {cond_iii_criterion(chain)}")
    print(f"  condition III, exhaustive form:       {cond_iii_bruteforce(chain)}")
    print()


def main() -> None:
    show("12,46")
    # The two condition-III readings are not equivalent. On this chain the
    # four-member criterion fires, but merging the four members crosses,
    # so no witness pair of partitions exists and the exhaustive form
    # refuses.
    show("123,46")


if __name__ == "__main__":
    main()
