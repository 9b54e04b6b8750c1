from . import tree_dict, presentation_dict, pandas
from .tree_dict import *
from .presentation_dict import *
from .pandas import *
