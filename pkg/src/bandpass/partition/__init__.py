"""Splitting b-matchings into matchings whose union with M1 stays acyclic."""

from .four import partition_into_four
from .pair import certify_property_p, partition_pair_with_property_p
from .result import PartitionError, PartitionResult, PropertyPCertificate
from .three import chain_paths, partition_acyclic_into_three

__all__ = [
    "PartitionError",
    "PartitionResult",
    "PropertyPCertificate",
    "certify_property_p",
    "chain_paths",
    "partition_acyclic_into_three",
    "partition_into_four",
    "partition_pair_with_property_p",
]
