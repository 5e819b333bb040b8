# This code is part of boson-star.
#
# (C) Copyright the boson-star developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

"""Version information for boson-star."""

import os
import subprocess

ROOT_DIR = os.path.dirname(os.path.abspath(__file__))
REPO_DIR = os.path.dirname(ROOT_DIR)


def _git_output(cmd):
    # minimal, locale-independent environment for git
    env = {key: os.environ[key] for key in ("SYSTEMROOT", "PATH") if key in os.environ}
    env.update({"LANGUAGE": "C", "LANG": "C", "LC_ALL": "C"})
    with subprocess.Popen(
        cmd, stdout=subprocess.PIPE, stderr=subprocess.PIPE, env=env, cwd=REPO_DIR
    ) as proc:
        stdout, stderr = proc.communicate()
        if proc.returncode > 0:
            raise OSError(
                "Command {} exited with code {}: {}".format(
                    cmd, proc.returncode, stderr.strip().decode("ascii")
                )
            )
        return stdout.strip().decode("ascii")


def git_revision() -> str:
    """Get the current git head sha1, or ``"Unknown"`` outside a checkout."""
    try:
        return _git_output(["git", "rev-parse", "HEAD"])
    except OSError:
        return "Unknown"


with open(os.path.join(ROOT_DIR, "VERSION.txt"), "r") as version_file:
    VERSION = version_file.read().strip()


def get_version_info() -> str:
    """Get the full version string.

    Released trees report ``VERSION.txt`` verbatim. Development checkouts that are not on a
    tagged commit get a ``.dev0+<sha>`` suffix so run manifests identify the exact code.
    """
    full_version = VERSION
    if not os.path.exists(os.path.join(REPO_DIR, ".git")):
        return full_version
    try:
        release = _git_output(["git", "tag", "-l", "--points-at", "HEAD"])
    except Exception:  # pylint: disable=broad-except
        return full_version
    if not release:
        full_version += ".dev0+" + git_revision()[:7]
    return full_version


__version__ = get_version_info()
