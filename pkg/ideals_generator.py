"""
Generate ideals/corpus/monomial_NNN.ideal from the seeded monomial corpus
Each file is a random monomial ideal of finite colength in 2 or 3 variables
Run this script to materialize the corpus the property suites draw in memory
"""
import argparse
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from services.corpus import MONOMIAL, random_monomial_ideal, suite_rng


def generate(directory: str, count: int, seed: int) -> int:
    os.makedirs(directory, exist_ok=True)
    for index in range(count):
        rng = suite_rng(seed, MONOMIAL, index)
        n = rng.choice([2, 3])
        ideal = random_monomial_ideal(rng, n)
        filename = os.path.join(directory, f"monomial_{index:03d}.ideal")
        with open(filename, "w", encoding="utf-8") as f:
            f.write(f"# corpus seed {seed}, index {index}\n")
            f.write(ideal.to_presentation().render())
        print(f"✓ Created {filename}")
    return count


def main():
    parser = argparse.ArgumentParser(description="Write the monomial corpus as ideal files")
    parser.add_argument("--out", default=os.path.join("ideals", "corpus"))
    parser.add_argument("--count", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    written = generate(args.out, args.count, args.seed)
    print(f"\n{'=' * 60}")
    print(f"✓ Successfully created {written} ideal files in {args.out}")
    print(f"{'=' * 60}")


if __name__ == "__main__":
    main()
