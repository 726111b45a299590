import random
from bookramsey.entities import build_graph


def random_graph(order, density, seed):
    rng = random.Random(seed)
    edges = [
        (u, v)
        for u in range(order)
        for v in range(u + 1, order)
        if rng.random() < density
    ]
    return build_graph(order, edges)
