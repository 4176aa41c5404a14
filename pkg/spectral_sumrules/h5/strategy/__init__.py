# Registration order matters: Data.write tries the most recently registered strategy first,
# so generic strategies come before the more specific ones.
from .scalar import NoneType as none, Boolean as bool, Integer as int, String as str
from .fraction import Rational as fraction
from .sequence import List as list, Tuple as tuple
from .readwriteable import ReadWriteable as readwriteable
