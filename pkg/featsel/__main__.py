import sys

from featsel.main import main

sys.exit(main())
