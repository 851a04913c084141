"""Small integer-capacity Dinic max-flow, with residual reachability access."""

from __future__ import annotations

from collections import deque


class FlowNetwork:
    def __init__(self, n: int):
        self.n = n
        self.graph = [[] for _ in range(n)]  # per node: list of arc indices
        self.to = []
        self.cap = []

    def add_edge(self, u: int, v: int, cap: int) -> int:
        """Add arc u->v with capacity cap; returns its index (reverse at idx+1)."""
        idx = len(self.to)
        self.graph[u].append(idx)
        self.to.append(v)
        self.cap.append(cap)
        self.graph[v].append(idx + 1)
        self.to.append(u)
        self.cap.append(0)
        return idx

    def flow_on(self, idx: int) -> int:
        return self.cap[idx + 1]

    def max_flow(self, s: int, t: int) -> int:
        total = 0
        while True:
            level = [-1] * self.n
            level[s] = 0
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for idx in self.graph[x]:
                    y = self.to[idx]
                    if self.cap[idx] > 0 and level[y] < 0:
                        level[y] = level[x] + 1
                        queue.append(y)
            if level[t] < 0:
                return total
            it = [0] * self.n

            def dfs(x, pushed):
                if x == t:
                    return pushed
                while it[x] < len(self.graph[x]):
                    idx = self.graph[x][it[x]]
                    y = self.to[idx]
                    if self.cap[idx] > 0 and level[y] == level[x] + 1:
                        d = dfs(y, min(pushed, self.cap[idx]))
                        if d > 0:
                            self.cap[idx] -= d
                            self.cap[idx + 1] += d
                            return d
                    it[x] += 1
                return 0

            while True:
                pushed = dfs(s, 1 << 60)
                if pushed == 0:
                    break
                total += pushed

    def residual_reachable(self, s: int) -> set:
        seen = {s}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for idx in self.graph[x]:
                y = self.to[idx]
                if self.cap[idx] > 0 and y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen
