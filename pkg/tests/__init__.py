import os

TESTS_DIR = os.path.dirname(os.path.abspath(__file__))
RESOURCES_DIR = f'{TESTS_DIR}/resources'
CONFIGS_DIR = f'{os.path.dirname(TESTS_DIR)}/configs'
