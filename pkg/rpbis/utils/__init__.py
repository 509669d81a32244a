"""
utils rpbis module
"""

from . import rational_tools
from . import settings

__all__ = ['rational_tools', 'settings']
