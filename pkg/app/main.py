import sys
from typing import List, Optional

from pydantic import ValidationError

from app.cli.routes import build_parser
from app.core.errors import BasisUnavailable, CBlocksError
from app.utils.logger import logger

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_CAPABILITY = 3


def _one_line(error: Exception) -> str:
    if isinstance(error, ValidationError):
        first = error.errors()[0]
        where = ".".join(str(part) for part in first["loc"])
        return f"{where}: {first['msg']}"
    return str(error).splitlines()[0] if str(error) else type(error).__name__


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.handler(args)
    except BasisUnavailable as e:
        logger.debug(f"{args.command}: basis unavailable: {str(e)}")
        sys.stderr.write(f"error: {_one_line(e)}\n")
        return EXIT_CAPABILITY
    except (CBlocksError, ValidationError) as e:
        logger.debug(f"{args.command}: rejected input: {str(e)}")
        sys.stderr.write(f"error: {type(e).__name__}: {_one_line(e)}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
