from .commands import main, build_parser, EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_NULL_CONE, EXIT_IO
from .expression import parse, evaluate
