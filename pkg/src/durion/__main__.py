import sys

from durion.cli import main

sys.exit(main())
