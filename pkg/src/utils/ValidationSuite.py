from enum import Enum


class ValidationSuite(Enum):
    LSH = "lsh"
    SKETCH = "sketch"
    GRADCHECK = "gradcheck"
    BINARIZATION = "binarization"
    SPEED = "speed"
    ALL = "all"
