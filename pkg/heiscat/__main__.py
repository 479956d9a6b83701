"""``python -m heiscat``."""
import sys

from heiscat.cli.main import main

sys.exit(main())
