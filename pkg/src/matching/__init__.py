from .matching import (
    MatchingInfo,
    count_matchings,
    has_perfect_matching,
    is_saturated,
    matching_info,
    matching_number,
)

__all__ = [
    'MatchingInfo', 'count_matchings', 'has_perfect_matching',
    'is_saturated', 'matching_info', 'matching_number',
]
