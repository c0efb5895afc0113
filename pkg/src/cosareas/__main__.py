import sys

from cosareas.cli import main

sys.exit(main())
