from . import spec, compat
from .spec import *
from .compat import *
