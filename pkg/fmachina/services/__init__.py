"""
Services package initialization.
"""
from fmachina.services.base_service import BaseCategoryService
from fmachina.services.adjunction_service import AdjunctionService
from fmachina.services.machine_service import MachineService
from fmachina.services.behavior_service import BehaviorService
from fmachina.services.limit_service import LimitService
from fmachina.services.algebra_service import AlgebraService
from fmachina.services.document_service import DocumentService

__all__ = [
    'AdjunctionService',
    'AlgebraService',
    'BaseCategoryService',
    'BehaviorService',
    'DocumentService',
    'LimitService',
    'MachineService'
]
