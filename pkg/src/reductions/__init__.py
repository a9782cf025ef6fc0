from .delta import (
    DeltaClass,
    ReductionStep,
    ReductionTrace,
    check_trace,
    delta_class,
    delta_class_bound,
    delta_reduce,
    delta_step,
)
from .twins import TwinPair, find_twins, twin_reduce

__all__ = [
    'DeltaClass', 'ReductionStep', 'ReductionTrace', 'check_trace',
    'delta_class', 'delta_class_bound', 'delta_reduce', 'delta_step',
    'TwinPair', 'find_twins', 'twin_reduce',
]
