import sys

from gemforge.cli import main

sys.exit(main())
