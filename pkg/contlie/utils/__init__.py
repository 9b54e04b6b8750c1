from . import utilities
from .utilities import *
