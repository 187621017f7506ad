# Copyright (C) 2024 The fermatpy developers
#
# SPDX-License-Identifier: MIT

import sys

from .cli import main

sys.exit(main())
