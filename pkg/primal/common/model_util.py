from abc import ABC, abstractmethod
from logging import Logger
from typing import List, Optional, Set, Type, Dict, Any

from primal.common.model import FileModel


class InvalidMappedPropertyException(Exception):

    def __init__(self, msg: str):
        self.message = msg


class FileModelPropertyMapper(ABC):

    @abstractmethod
    def supports(self, prop_type: type) -> bool:
        pass

    @abstractmethod
    def map(self, prop_val: str, prop_type: type) -> Optional[object]:
        pass


class IntPropertyMapper(FileModelPropertyMapper):

    def supports(self, prop_type: type) -> bool:
        return prop_type == int

    def map(self, prop_val: str, prop_type: type) -> Optional[int]:
        try:
            return int(prop_val)
        except ValueError:
            raise InvalidMappedPropertyException("It should be an integer")


class BoolPropertyMapper(FileModelPropertyMapper):

    FALSE_STRINGS = {'0', 'false'}
    TRUE_STRINGS = {'1', 'true'}

    def supports(self, prop_type: type) -> bool:
        return prop_type == bool

    def map(self, prop_val: str, prop_type: type) -> Optional[bool]:
        lower_val = prop_val.lower()

        if lower_val in self.FALSE_STRINGS:
            return False
        elif lower_val in self.TRUE_STRINGS:
            return True

        raise InvalidMappedPropertyException(f"It should be a boolean (accepted values: "
                                             f"{','.join(sorted([*self.FALSE_STRINGS, *self.TRUE_STRINGS]))})")


def _instantiate_mappers(root: Type[FileModelPropertyMapper]) -> List[FileModelPropertyMapper]:
    instances = []

    for sub in root.__subclasses__():
        if ABC not in sub.__bases__:
            instances.append(sub())

        instances.extend(_instantiate_mappers(sub))

    return instances


def _to_raw_str(value: Any) -> str:
    if isinstance(value, bool):
        return str(value).lower()

    return str(value)


class FileModelFiller:
    """
    Maps raw values onto FileModel properties. Invalid values are logged and left unset, so the model falls
    back to its defaults.
    """

    def __init__(self, logger: Logger):
        self._log = logger
        self._property_mappers = _instantiate_mappers(FileModelPropertyMapper)
        self._mapper_type_cache: Dict[type, FileModelPropertyMapper] = {}

    def get_mapper(self, prop_type: type) -> Optional[FileModelPropertyMapper]:
        mapper = self._mapper_type_cache.get(prop_type)

        if not mapper:
            supported_mappers = [m for m in self._property_mappers if m.supports(prop_type)]

            if supported_mappers:
                mapper = supported_mappers[0]
                self._mapper_type_cache[prop_type] = mapper

        return mapper

    def _map_value(self, root: FileModel, file_prop: str, prop_val: str, prop_type: type, mapped_obj: dict,
                   prop_path: str):
        mapper = self.get_mapper(prop_type)

        if not mapper:
            self._log.error(f"Unsupported {root.get_output_name()}'s property type: {prop_type}")
            return

        try:
            mapped_obj[prop_path] = mapper.map(prop_val, prop_type)
        except InvalidMappedPropertyException as e:
            self._log.warning(f"Invalid {root.get_output_name()}'s property '{file_prop}' mapping: {e.message}")

    def fill(self, root: FileModel, file_content: str):
        """
        Reads 'key=value' lines. '#' starts a comment; a key without a value takes the mapping default.
        """
        prop_mapping = root.get_full_mapping()

        if not prop_mapping:
            return

        mapped_obj = {}

        for line in file_content.split('\n'):
            clean_line = line.strip()

            if not clean_line or clean_line.startswith('#'):
                continue

            line_split = clean_line.split('=', 1)
            file_prop = line_split[0].strip()
            model_prop = prop_mapping.get(file_prop)

            if not model_prop:
                self._log.warning(f"Unknown {root.get_output_name()}'s property '{file_prop}'")
                continue

            prop_path, prop_type = model_prop[0], model_prop[1]

            if len(line_split) == 1:
                if model_prop[2] is not None:
                    mapped_obj[prop_path] = model_prop[2]
            else:
                prop_val = line_split[1].split('#')[0].strip()
                self._map_value(root, file_prop, prop_val, prop_type, mapped_obj, prop_path)

        for prop, val in mapped_obj.items():
            setattr(root, prop, val)

    def fill_dict(self, root: FileModel, data: Dict[str, Any]) -> Set[str]:
        """
        Fills the model from an already parsed tree (e.g. a JSON node), using the same mappers as 'fill'.
        :return: the keys that are not mapped by the model
        """
        prop_mapping = root.get_full_mapping()
        unknown, mapped_obj = set(), {}

        for key, value in data.items():
            model_prop = prop_mapping.get(key)

            if not model_prop:
                unknown.add(key)
            elif value is None:
                if model_prop[2] is not None:
                    mapped_obj[model_prop[0]] = model_prop[2]
            else:
                self._map_value(root, key, _to_raw_str(value), model_prop[1], mapped_obj, model_prop[0])

        for prop, val in mapped_obj.items():
            setattr(root, prop, val)

        return unknown
