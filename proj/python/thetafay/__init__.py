"""Fay operators on theta characteristics, Sp(g, F2) and theta nullwert relations."""

from ._thetafay import *  # noqa: F401,F403
from ._thetafay import __version__, run_cli


def main(argv=None):
    import sys

    code, out, err = run_cli(list(sys.argv[1:] if argv is None else argv))
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code
