import json
from pathlib import Path


def _get_path_object(file_path, create_parent=False):
    if isinstance(file_path, str):
        file_path = Path(file_path)
    if not isinstance(file_path, Path):
        raise TypeError("File path is not of data_type Path: {}".format(file_path.__class__))
    if create_parent and not file_path.parent.exists():
        file_path.parent.mkdir(parents=True)
    return file_path


def get_writer(file_path, mode='w', encoding="utf-8"):
    if mode not in ['w', 'a']:
        raise ValueError("Writer mode {} not supported".format(mode))
    file_path = _get_path_object(file_path, create_parent=True)
    return file_path.open(mode, encoding=encoding)


def get_reader(file_path, mode='r', encoding="utf-8"):
    if mode != 'r':
        raise ValueError("Reader mode {} not supported".format(mode))
    file_path = _get_path_object(file_path)
    return file_path.open(mode, encoding=encoding)


def exists(file_path):
    return _get_path_object(file_path).exists()


def read_json(file_path):
    with get_reader(file_path) as fr:
        return json.load(fr)


def write_json(file_path, document):
    with get_writer(file_path) as fw:
        json.dump(document, fw, indent=2, ensure_ascii=False)
        fw.write("\n")
