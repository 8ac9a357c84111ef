# -*- coding: utf-8 -*-
import os
import sys
import threading
from abc import ABC, abstractmethod
from datetime import datetime

__author__ = "Romain Mormont <romainmormont@hotmail.com>"
__version__ = "0.2"


class Logger(ABC):
    """Base class of the loggers. A logger prints the messages whose level is lower or equal to its verbosity
    level, the printing itself is delegated to the subclasses.
    """
    SILENT = 0
    ERROR = 1
    WARNING = 2
    INFO = 3
    DEBUG = 4

    _LEVEL_NAMES = {ERROR: "ERROR", WARNING: "WARN ", INFO: "INFO ", DEBUG: "DEBUG"}

    def __init__(self, level, prefix=True, pid=True):
        """
        Parameters
        ----------
        level: int
            Verbosity level
        prefix: bool
            True for prepending the '[id][time][level]' prefix to every line of the messages
        pid: bool
            True for identifying the emitter by process id, False for thread id
        """
        self._level = level
        self._prefix = prefix
        self._pid = pid

    @property
    def level(self):
        return self._level

    @level.setter
    def level(self, level):
        self._level = level

    def debug(self, msg):
        self._log(Logger.DEBUG, msg)

    def info(self, msg):
        self._log(Logger.INFO, msg)

    def warning(self, msg):
        self._log(Logger.WARNING, msg)

    def error(self, msg):
        self._log(Logger.ERROR, msg)

    # short aliases
    d = debug
    i = info
    w = warning
    e = error

    def _log(self, level, msg):
        if self._level >= level:
            self._print(self._format_msg(level, msg))

    @abstractmethod
    def _print(self, formatted_msg):
        pass

    def prefix(self, level):
        if self._pid:
            emitter = "pid:{}".format(str(os.getpid()).zfill(6))
        else:
            emitter = "tid:{}".format(str(threading.current_thread().ident).zfill(6))
        return "[{}][{}][{}]".format(emitter, datetime.now().isoformat(), self.level2str(level))

    @classmethod
    def level2str(cls, level):
        return cls._LEVEL_NAMES.get(level, "INFO ")

    def _format_msg(self, level, msg):
        if not self._prefix:
            return msg
        prefix = self.prefix(level)
        return os.linesep.join("{} {}".format(prefix, row) for row in str(msg).splitlines())


class StreamLogger(Logger):
    """A logger writing its messages to a text stream (standard error by default, so that reports written
    on the standard output are not polluted)
    """
    def __init__(self, level, stream=None, prefix=True, pid=True):
        super(StreamLogger, self).__init__(level, prefix=prefix, pid=pid)
        self._stream = stream

    def _print(self, formatted_msg):
        stream = self._stream if self._stream is not None else sys.stderr
        stream.write(formatted_msg + os.linesep)
        stream.flush()


class FileLogger(Logger):
    """A logger appending its messages to a file"""
    def __init__(self, filepath, level, prefix=True):
        """
        Parameters
        ----------
        filepath: str
            Path of the log file (truncated when opened)
        level: int
            Verbosity level
        prefix: bool
            True for prefixing the messages
        """
        super(FileLogger, self).__init__(level, prefix=prefix)
        self._file = open(filepath, "w+")

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.close()

    def _print(self, formatted_msg):
        self._file.write(formatted_msg + os.linesep)

    def close(self):
        self._file.close()


class RecordingLogger(Logger):
    """A logger keeping the messages in memory, without prefix, in emission order"""
    def __init__(self, level=Logger.DEBUG):
        super(RecordingLogger, self).__init__(level, prefix=False)
        self._records = list()

    @property
    def records(self):
        return list(self._records)

    def _print(self, formatted_msg):
        self._records.append(formatted_msg)


class SilentLogger(Logger):
    """A logger that ignores the messages"""
    def __init__(self, prefix=True):
        super(SilentLogger, self).__init__(Logger.SILENT, prefix=prefix)

    def _print(self, formatted_msg):
        pass


class Loggable(ABC):
    """Base class of the components which report their progress through a logger. The default logger is
    silent.
    """
    def __init__(self, logger=SilentLogger()):
        self._logger = logger

    @property
    def logger(self):
        return self._logger

    @logger.setter
    def logger(self, logger):
        self._logger = logger
