import sys

from nodal_kstab.cli import main

sys.exit(main())
