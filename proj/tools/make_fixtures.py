#!/usr/bin/env python3
"""Regenerates the bundled synthetic list fixtures under data/.

Three 250-item "top movie" lists drawn from a shared catalog:
  alpha.txt  - reference ordering
  beta.txt   - ~70% shared with alpha, locally shuffled ranks
  gamma.txt  - ~35% shared with alpha, heavier reordering
"""
import pathlib
import random

ADJ = ["Silent", "Crimson", "Hidden", "Last", "Golden", "Broken", "Distant",
       "Electric", "Frozen", "Wild", "Quiet", "Burning", "Lost", "Hollow",
       "Bright", "Endless", "Paper", "Iron", "Velvet", "Midnight"]
NOUN = ["Harbor", "Garden", "Empire", "River", "Station", "Mirror", "Kingdom",
        "Letter", "Orchard", "Signal", "Horizon", "Machine", "Voyage",
        "Lantern", "Frontier", "Canyon", "Island", "Cathedral", "Winter",
        "Circus"]

K = 250


def catalog(rng):
    titles = set()
    while len(titles) < 900:
        titles.add(f"The {rng.choice(ADJ)} {rng.choice(NOUN)} ({rng.randint(1930, 2015)})")
    out = sorted(titles)
    rng.shuffle(out)
    return out


def derive(rng, base, pool, share, jitter):
    kept = [t for t in base if rng.random() < share]
    keyed = [(i + rng.gauss(0, jitter), t) for i, t in enumerate(base) if t in set(kept)]
    fresh = [t for t in pool if t not in set(base)]
    rng.shuffle(fresh)
    fresh = fresh[: K - len(kept)]
    keyed += [(rng.uniform(0, K), t) for t in fresh]
    keyed.sort()
    return [t for _, t in keyed]


def main():
    rng = random.Random(20131011)
    pool = catalog(rng)
    alpha = pool[:K]
    beta = derive(rng, alpha, pool, 0.7, 12.0)
    gamma = derive(rng, alpha, pool, 0.35, 40.0)
    root = pathlib.Path(__file__).resolve().parent.parent / "data"
    root.mkdir(exist_ok=True)
    for name, items in (("alpha", alpha), ("beta", beta), ("gamma", gamma)):
        assert len(items) == K and len(set(items)) == K
        (root / f"{name}.txt").write_text("\n".join(items) + "\n")
    (root / "mask_examples.txt").write_text("0011001000\n0011100000\n")


if __name__ == "__main__":
    main()
