#!/usr/bin/env python3

# Copyright (C) 2024 The fermatpy developers
#
# SPDX-License-Identifier: MIT

from setuptools import setup

# Metadata lives in setup.cfg, the version comes from setuptools_scm.
setup()
