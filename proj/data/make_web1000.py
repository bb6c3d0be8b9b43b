#!/usr/bin/env python3
# Copyright 2026 The ergogap Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates web1000.tsv: a 1000-node synthetic web graph.

Out-degrees follow a truncated Zipf law, targets favour low ids
(preferential attachment by rank) and 25 pages have no out-links.
Seeded, so the output is byte-identical across runs.
"""
import random
import sys

N = 1000
DANGLING = 25


def main(path):
    rng = random.Random(20260101)
    dangling = set(rng.sample(range(N), DANGLING))
    weights = [1.0 / (i + 1) ** 0.8 for i in range(N)]
    lines = ["# synthetic web graph: src dst", f"# nodes {N}, dangling {DANGLING}"]
    for src in range(N):
        if src in dangling:
            continue
        degree = min(60, int(rng.paretovariate(1.3)) + 1)
        targets = set(rng.choices(range(N), weights=weights, k=degree))
        # ring edge keeps every id present and the link graph connected
        targets.add((src + 1) % N)
        for dst in sorted(targets):
            lines.append(f"{src}\t{dst}")
    with open(path, "w") as f:
        f.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "web1000.tsv")
