from . import json, kernels
from .json import *
from .kernels import *
