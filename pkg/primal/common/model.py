from abc import ABC, abstractmethod
from enum import Enum
from typing import Tuple, Optional, Dict


class CustomEnum(Enum):

    @classmethod
    def from_value(cls, value: object) -> Optional["CustomEnum"]:
        if value is not None:
            for c in cls:
                if c.value == value:
                    return c


class FileModel(ABC):
    """
    A model filled from 'key=value' configuration files or from parsed JSON nodes through FileModelFiller.
    """

    @abstractmethod
    def is_valid(self) -> bool:
        pass

    @abstractmethod
    def get_file_mapping(self) -> Dict[str, Tuple[str, type, Optional[object]]]:
        """
        :return: a dict mapping properties from the configuration source to the model's.
        The mapped tuples represent the model's property name, type and the default value for valueless keys.
        """
        pass

    @abstractmethod
    def get_file_root_node_name(self) -> Optional[str]:
        pass

    def get_output_name(self) -> str:
        return self.__class__.__name__

    def get_full_mapping(self) -> Dict[str, Tuple[str, type, Optional[object]]]:
        mapping = self.get_file_mapping()

        if not mapping:
            return {}

        root_node = self.get_file_root_node_name()
        return {f'{root_node}.{k}': v for k, v in mapping.items()} if root_node else dict(mapping)

    def __eq__(self, other):
        if not isinstance(other, self.__class__):
            return False

        return all(v == getattr(other, p) for p, v in self.__dict__.items())

    def __repr__(self):
        return f'{self.__class__.__name__} {self.__dict__}'
