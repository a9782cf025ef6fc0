from .enumeration import (
    EnumFilter,
    InstanceGroup,
    enumerate_groups,
    enumerate_oriented,
    group_of,
    iter_groups,
    iter_instances,
    orientations_of,
    sample_oriented,
    tree_shape_groups,
)
from .checks import Check, REGISTRY, list_checks, resolve
from .verify import VerifyReport, Violation, replay, shrink, verify
from .payloads import charpoly_payload, classify_payload, rank_payload, reduce_payload

__all__ = [
    'EnumFilter', 'InstanceGroup', 'enumerate_groups', 'enumerate_oriented', 'group_of',
    'iter_groups', 'iter_instances', 'orientations_of', 'sample_oriented', 'tree_shape_groups',
    'Check', 'REGISTRY', 'list_checks', 'resolve',
    'VerifyReport', 'Violation', 'replay', 'shrink', 'verify',
    'charpoly_payload', 'classify_payload', 'rank_payload', 'reduce_payload',
]
