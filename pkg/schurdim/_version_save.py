#!/usr/bin/env python
# This file was created automatically
longversion = '2026.10.18-23-51-10'
