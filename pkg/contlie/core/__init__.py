from . import symbols, expr, laws
from .symbols import *
from .expr import *
from .laws import *
