import sys

from zagreb.cli import main

sys.exit(main())
