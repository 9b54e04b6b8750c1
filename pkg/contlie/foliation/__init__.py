from . import cech, godbillon_vey
from .cech import *
from .godbillon_vey import *
