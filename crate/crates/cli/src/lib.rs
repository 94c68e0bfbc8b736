//! Library surface of the classdoc command-line tool.
