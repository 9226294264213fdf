#!/usr/bin/env python3
"""Timing ladder: spectral transfer vs direct edge-matrix eigensolve.

Emits CSV on stdout. The transfer route diagonalizes the (n+m) x (n+m)
adjacency matrix; the direct route diagonalizes the 2|E| x 2|E| edge
matrix, so the ratio should grow with the graph.

    python3 scripts/bench_ladder.py --dv 3 --dc 6 --sizes 64,128,256
"""

import sys

from girthspec.cli import main

if __name__ == "__main__":
    argv = sys.argv[1:] or ["--dv", "3", "--dc", "6", "--sizes", "64,128,256"]
    raise SystemExit(main(["bench", *argv]))
