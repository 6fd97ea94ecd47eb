from bergec4.cli import entry

entry()
