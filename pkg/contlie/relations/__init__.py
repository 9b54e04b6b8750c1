from . import tree, dependence
from .tree import *
from .dependence import *
