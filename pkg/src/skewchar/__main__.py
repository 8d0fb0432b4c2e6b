import sys

from skewchar.cli import main

sys.exit(main())
