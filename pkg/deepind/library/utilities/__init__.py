from deepind.library.utilities.utilities import (
    get_data_file_path,
    list_corpus_files,
    read_data_file,
)

__all__ = [get_data_file_path, list_corpus_files, read_data_file]
