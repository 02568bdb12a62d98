from ._version import version as __version__  # noqa: F401
from . import alcoves  # noqa: F401
from . import cnvnc  # noqa: F401
from .cnvnc import analyze  # noqa: F401
from . import homdim  # noqa: F401
from . import lattice  # noqa: F401
from .lattice import Context, Partition, Weight  # noqa: F401
from . import oracle  # noqa: F401
from . import schur  # noqa: F401
from . import symchar  # noqa: F401
from . import uporder  # noqa: F401
from . import util  # noqa: F401
