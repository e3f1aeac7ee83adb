"""
Union-find over a fixed, ordered universe.

The root of every class is its least element in the universe order, so the
representatives double as canonical block identifiers.
"""


class UnionFind:

    def __init__(self, universe):
        self.order = {x: position for position, x in enumerate(universe)}
        self.parent = {x: x for x in self.order}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if self.order[y] < self.order[x]:
            x, y = y, x
        self.parent[y] = x
        return True

    def classes(self):
        """Map every element to its least class member."""
        return {x: self.find(x) for x in self.order}
