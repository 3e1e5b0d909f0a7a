__app_name__ = 'primal'
__version__ = '0.1.0'
