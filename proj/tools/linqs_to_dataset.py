# Copyright 2026 The RITR Authors.
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Convert LINQS or Planetoid citation data into the ritr dataset layout.

Output directory:
  meta.json     {"nodes": N, "dim": D, "classes": C}
  features.txt  N rows of D space-separated values
  edges.txt     "u v" per undirected edge, u < v
  labels.txt    "node class" per labelled node

LINQS input:     <name>.content and <name>.cites in --src
Planetoid input: ind.<name>.{x,tx,allx,y,ty,ally,graph,test.index} in --src
"""

import argparse
import json
import pickle
import sys
from pathlib import Path

import numpy as np
import scipy.sparse as sp


def load_linqs(src: Path, name: str):
    ids, rows, labels = [], [], []
    with open(src / f"{name}.content") as fh:
        for line in fh:
            parts = line.split()
            if not parts:
                continue
            ids.append(parts[0])
            rows.append([float(v) for v in parts[1:-1]])
            labels.append(parts[-1])
    index = {pid: i for i, pid in enumerate(ids)}
    classes = sorted(set(labels))
    cls = {c: i for i, c in enumerate(classes)}
    edges = set()
    dropped = 0
    with open(src / f"{name}.cites") as fh:
        for line in fh:
            parts = line.split()
            if len(parts) != 2:
                continue
            a, b = parts
            # Citeseer cites documents that have no content row.
            if a not in index or b not in index:
                dropped += 1
                continue
            u, v = index[a], index[b]
            if u != v:
                edges.add((min(u, v), max(u, v)))
    if dropped:
        print(f"skipped {dropped} citations to unknown documents", file=sys.stderr)
    return np.array(rows), sorted(edges), [cls[c] for c in labels], len(classes)


def _unpickle(path: Path):
    with open(path, "rb") as fh:
        return pickle.load(fh, encoding="latin1")


def load_planetoid(src: Path, name: str):
    part = {k: _unpickle(src / f"ind.{name}.{k}") for k in ("allx", "tx", "ally", "ty", "graph")}
    test_idx = [int(v) for v in open(src / f"ind.{name}.test.index").read().split()]
    tx, ty = part["tx"], part["ty"]
    if name == "citeseer":
        # Isolated test nodes are absent from tx; pad them with zero rows.
        full = range(min(test_idx), max(test_idx) + 1)
        tx_ext = sp.lil_matrix((len(full), tx.shape[1]))
        tx_ext[sorted(test_idx) - np.min(test_idx), :] = tx
        ty_ext = np.zeros((len(full), ty.shape[1]))
        ty_ext[sorted(test_idx) - np.min(test_idx), :] = ty
        tx, ty = tx_ext, ty_ext
    x = sp.vstack((part["allx"], tx)).tolil()
    y = np.vstack((part["ally"], ty))
    order = np.sort(test_idx)
    x[test_idx, :] = x[order, :]
    y[test_idx, :] = y[order, :]
    n = x.shape[0]
    edges = set()
    for u, nbrs in part["graph"].items():
        for v in nbrs:
            if u != v and u < n and v < n:
                edges.add((min(u, v), max(u, v)))
    labels = [int(np.argmax(r)) if r.any() else -1 for r in y]
    return x.toarray(), sorted(edges), labels, y.shape[1]


def write(out: Path, x, edges, labels, classes):
    out.mkdir(parents=True, exist_ok=True)
    n, d = x.shape
    (out / "meta.json").write_text(json.dumps({"nodes": n, "dim": d, "classes": classes}) + "\n")
    with open(out / "features.txt", "w") as fh:
        for row in x:
            fh.write(" ".join(f"{v:g}" for v in row) + "\n")
    with open(out / "edges.txt", "w") as fh:
        for u, v in edges:
            fh.write(f"{u} {v}\n")
    with open(out / "labels.txt", "w") as fh:
        for i, c in enumerate(labels):
            if c >= 0:
                fh.write(f"{i} {c}\n")
    print(f"{out}: nodes {n} edges {len(edges)} dim {d} classes {classes}")


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawTextHelpFormatter)
    ap.add_argument("--src", type=Path, required=True)
    ap.add_argument("--name", required=True, help="cora, citeseer, ...")
    ap.add_argument("--format", choices=("linqs", "planetoid"), default="linqs")
    ap.add_argument("--out", type=Path, required=True)
    args = ap.parse_args()
    load = load_linqs if args.format == "linqs" else load_planetoid
    write(args.out, *load(args.src, args.name))


if __name__ == "__main__":
    main()
