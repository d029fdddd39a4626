# __init__.py needed for automatic generation of documentation
