"""Generate the small graph6 corpora used by the integration tests.

Writes every connected graph (up to isomorphism) on 1..=8 vertices, and the
chordal subset of it. n <= 7 comes from the networkx atlas; n = 8 is built by
adding one vertex to every 7-vertex graph and deduplicating by isomorphism.
"""
import sys
from collections import defaultdict
from itertools import combinations

import networkx as nx


def atlas_by_order():
    by_n = defaultdict(list)
    for g in nx.graph_atlas_g():
        by_n[g.number_of_nodes()].append(g)
    return by_n


def extend(graphs, n):
    buckets = defaultdict(list)
    out = []
    for base in graphs:
        for r in range(1, n):
            for nbrs in combinations(range(n - 1), r):
                g = base.copy()
                g.add_node(n - 1)
                g.add_edges_from((n - 1, u) for u in nbrs)
                if not nx.is_connected(g):
                    continue
                key = (g.number_of_edges(), tuple(sorted(d for _, d in g.degree())),
                       nx.weisfeiler_lehman_graph_hash(g, iterations=3))
                if any(nx.is_isomorphic(g, h) for h in buckets[key]):
                    continue
                buckets[key].append(g)
                out.append(g)
    return out


def g6(g):
    g = nx.convert_node_labels_to_integers(g)
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def main(outdir):
    by_n = atlas_by_order()
    connected = []
    for n in range(1, 8):
        connected += [g for g in by_n[n] if nx.is_connected(g)]
    n8 = extend(by_n[7], 8)
    assert len(n8) == 11117, len(n8)
    connected += n8
    with open(f"{outdir}/connected_upto8.g6", "w") as f:
        for g in connected:
            f.write(g6(g) + "\n")
    with open(f"{outdir}/chordal_connected_upto8.g6", "w") as f:
        for g in connected:
            if nx.is_chordal(g):
                f.write(g6(g) + "\n")
    print(len(connected))


if __name__ == "__main__":
    main(sys.argv[1])
