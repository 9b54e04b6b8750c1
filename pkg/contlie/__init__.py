from . import (
    utils,
    core,
    complexes,
    relations,
    lie,
    foliation,
    convert,
    readwrite,
)
from .utils import *
from .core import *
from .complexes import *
from .relations import *
from .lie import *
from .foliation import *
from .convert import *
from .readwrite import *


__version__ = "0.1"
