"""Partition containers and the direct-inspection checks that certify them."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..edges import Edge, Matching, components_2matching, is_acyclic_2matching, is_matching


class PartitionError(ValueError):
    """Precondition violated by the inputs of a partition scheme."""


@dataclass(frozen=True)
class PartitionResult:
    """Labelled edge sets plus the matching ``base`` they are certified against.

    Every label in ``certified`` promises that ``base`` together with that part
    is a set of vertex-disjoint paths.
    """

    parts: dict[str, frozenset[Edge]]
    base: Matching
    certified: tuple[str, ...]

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.parts)

    def edges(self) -> frozenset[Edge]:
        return frozenset().union(*self.parts.values())

    def weight(self, label: str, weights) -> int:
        return int(sum(weights[u][v] for u, v in self.parts[label]))

    def best_part(self, weights, labels=None) -> tuple[str, frozenset[Edge]]:
        """Heaviest certified part; ties go to the earliest label."""
        labels = self.certified if labels is None else labels
        best = max(labels, key=lambda lab: (self.weight(lab, weights), -labels.index(lab)))
        return best, self.parts[best]

    def problems(self, expected_edges=None) -> list[str]:
        """Human-readable violations of the partition contract (empty if valid)."""
        out = []
        seen: dict[Edge, str] = {}
        for lab, es in self.parts.items():
            if not is_matching(es):
                out.append(f"{lab} is not a matching")
            for e in es:
                if e in seen:
                    out.append(f"edge {e} in both {seen[e]} and {lab}")
                seen[e] = lab
        for lab in self.certified:
            if not is_acyclic_2matching(self.base.edges, self.parts[lab]):
                out.append(f"M1 + {lab} is not an acyclic 2-matching")
        if expected_edges is not None and set(seen) != set(expected_edges):
            out.append("parts do not cover the input edge set exactly")
        return out


@dataclass(frozen=True)
class PropertyPCertificate:
    """Named boolean checks for the two-2-matching split; all true on success."""

    flags: dict[str, bool] = field(default_factory=dict)
    problematic_pairs_resolved: int = 0

    @property
    def ok(self) -> bool:
        return all(self.flags.values())

    def failed(self) -> list[str]:
        return [k for k, v in self.flags.items() if not v]


def length4_cycles(base: Matching, edges) -> list[list[int]]:
    """Length-4 cycles of ``base + edges`` (both matchings), as vertex walks."""
    return [walk for walk, cyc in components_2matching(list(base.edges) + list(edges))
            if cyc and len(walk) == 4]


def cycles_with(base: Matching, edges) -> list[list[int]]:
    return [walk for walk, cyc in components_2matching(list(base.edges) + list(edges)) if cyc]
