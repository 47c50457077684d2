#!/usr/bin/env python3
"""Emit every connected graph with max degree <= 3 on 1..N vertices, one per
isomorphism class, as graph6 lines. Requires pynauty."""
import argparse
import sys

import networkx as nx
import pynauty


def certificate(n, edges):
    adj = {v: [] for v in range(n)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return pynauty.certificate(pynauty.Graph(n, adjacency_dict=adj))


def classes(n):
    level = {certificate(n, ()): ()}
    seen = dict(level)
    while level:
        nxt = {}
        for edges in level.values():
            deg = [0] * n
            present = set(edges)
            for u, v in edges:
                deg[u] += 1
                deg[v] += 1
            for u in range(n):
                if deg[u] >= 3:
                    continue
                for v in range(u + 1, n):
                    if deg[v] >= 3 or (u, v) in present:
                        continue
                    cand = tuple(sorted(present | {(u, v)}))
                    cert = certificate(n, cand)
                    if cert not in seen:
                        seen[cert] = cand
                        nxt[cert] = cand
        level = nxt
    return seen.values()


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("max_n", type=int)
    args = ap.parse_args()
    for n in range(1, args.max_n + 1):
        for edges in sorted(classes(n), key=lambda e: (len(e), e)):
            g = nx.Graph()
            g.add_nodes_from(range(n))
            g.add_edges_from(edges)
            if nx.is_connected(g):
                sys.stdout.write(nx.to_graph6_bytes(g, header=False).decode())


if __name__ == "__main__":
    main()
