#!/usr/bin/env python
"""Determine the package version

The version is taken from `git describe --tags HEAD` if this file is
tracked one level below the repository root. Otherwise it is read
from "_version_save.py" (not under version control, but shipped with
source distributions). As a last resort the file modification date
is used.
"""
if True:  # pragma: no cover
    import os
    from os.path import abspath, dirname, join, split
    import subprocess
    import sys
    import time
    import warnings

    def _git(*args):
        env = {key: os.environ[key] for key in ("SYSTEMROOT", "PATH")
               if key in os.environ}
        env.update(LANGUAGE="C", LANG="C", LC_ALL="C")
        proc = subprocess.Popen(("git",) + args,
                                cwd=dirname(abspath(__file__)),
                                stdout=subprocess.PIPE,
                                stderr=subprocess.PIPE,
                                env=env)
        return proc.communicate()[0].strip().decode("ascii", errors="ignore")

    def git_describe():
        """Version from `git describe`, empty string on failure"""
        try:
            loc = _git("ls-files", "--full-name", __file__)
            # tracked as "schurdim/_version.py"
            if loc and len(split(loc)) == 2:
                return _git("describe", "--tags", "HEAD")
        except OSError:
            pass
        return ""

    def load_version(versionfile):
        longversion = ""
        try:
            with open(versionfile, "r") as fd:
                for line in fd:
                    if line.startswith("longversion"):
                        longversion = line.split("=")[1].strip().strip("'")
        except OSError:
            pass
        return longversion

    def write_version(version, versionfile):
        try:
            with open(versionfile, "w") as fd:
                fd.write("#!/usr/bin/env python\n"
                         "# This file was created automatically\n"
                         "longversion = '{}'\n".format(version))
        except OSError:
            if not os.path.exists(versionfile):
                warnings.warn("Could not write package version to {}."
                              .format(versionfile))

    versionfile = join(dirname(abspath(__file__)), "_version_save.py")

    longversion = git_describe() or load_version(versionfile)

    if not longversion:
        ctime = os.stat(__file__)[8]
        longversion = time.strftime("%Y.%m.%d-%H-%M-%S", time.gmtime(ctime))

    if not hasattr(sys, "frozen") and longversion != load_version(versionfile):
        write_version(longversion, versionfile)

    # PEP 440-conform development version
    version = ".post".join(longversion.split("-")[:2])
