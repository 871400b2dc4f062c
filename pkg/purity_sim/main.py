"""
main.py — Command-line entry point.

Run:
  python -m purity_sim.main bounds --spectrum 0.1,0.9 --k 1 --delta 0.1
  python -m purity_sim.main simulate --spectrum depolarizing:d=3,eta=0.3 --n 2000 --trials 10000 --seed 7
  python -m purity_sim.main oracle --spectrum 3/10,7/10 --n 8 --k 2 --format json

Results go to stdout (or --out); structured logs go to stderr.
"""
import sys

from purity_sim.cli import main

if __name__ == "__main__":
    sys.exit(main())
