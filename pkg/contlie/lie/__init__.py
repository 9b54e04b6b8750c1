from . import presentation, algebra, jacobi, grading
from .presentation import *
from .algebra import *
from .jacobi import *
from .grading import *
