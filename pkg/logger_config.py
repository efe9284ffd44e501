"""Centralized logging configuration for isoperimetrix"""
import logging
from logging.handlers import RotatingFileHandler
import os

import config


def setup_logger(name='Isoperimetrix', log_dir=None):
    """
    Setup logging with a console handler and rotating file handlers

    Args:
        name: Logger name
        log_dir: Directory for log files (config.LOG_DIR if None, '' disables files)

    Returns:
        Configured logger instance
    """
    logger = logging.getLogger(name)
    logger.setLevel(logging.DEBUG)

    # Prevent duplicate handlers
    if logger.handlers:
        return logger

    if log_dir is None:
        log_dir = config.LOG_DIR

    # Console handler - stderr, stdout belongs to command payloads
    console_handler = logging.StreamHandler()
    console_handler.setLevel(getattr(logging, config.LOG_LEVEL, logging.WARNING))
    console_format = logging.Formatter(
        '%(asctime)s | %(levelname)-8s | %(message)s',
        datefmt='%H:%M:%S'
    )
    console_handler.setFormatter(console_format)
    logger.addHandler(console_handler)

    if not log_dir:
        return logger

    try:
        os.makedirs(log_dir, exist_ok=True)
    except OSError:
        logger.warning(f"⚠️ Cannot create log directory '{log_dir}', file logging disabled")
        return logger

    # Main file handler - DEBUG level with rotation
    main_file = os.path.join(log_dir, 'isoperimetrix.log')
    file_handler = RotatingFileHandler(
        main_file,
        maxBytes=10*1024*1024,  # 10MB
        backupCount=5,
        encoding='utf-8'
    )
    file_handler.setLevel(logging.DEBUG)
    file_format = logging.Formatter(
        '%(asctime)s | %(levelname)-8s | %(name)s | %(funcName)s:%(lineno)d | %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )
    file_handler.setFormatter(file_format)

    # Search file handler - profile search progress only
    search_file = os.path.join(log_dir, 'search.log')
    search_handler = RotatingFileHandler(
        search_file,
        maxBytes=5*1024*1024,  # 5MB
        backupCount=10,
        encoding='utf-8'
    )
    search_handler.setLevel(logging.INFO)
    search_handler.addFilter(SearchFilter())
    search_handler.setFormatter(logging.Formatter(
        '%(asctime)s | %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    ))

    # Error file handler - errors only
    error_file = os.path.join(log_dir, 'errors.log')
    error_handler = RotatingFileHandler(
        error_file,
        maxBytes=5*1024*1024,  # 5MB
        backupCount=5,
        encoding='utf-8'
    )
    error_handler.setLevel(logging.ERROR)
    error_handler.setFormatter(file_format)

    logger.addHandler(file_handler)
    logger.addHandler(search_handler)
    logger.addHandler(error_handler)

    return logger


def set_console_level(level):
    """Apply a console level to every logger created through setup_logger"""
    level = getattr(logging, str(level).upper(), logging.WARNING)
    for logger in list(logging.Logger.manager.loggerDict.values()):
        if not isinstance(logger, logging.Logger):
            continue
        for handler in logger.handlers:
            # file handlers subclass StreamHandler too
            if type(handler) is logging.StreamHandler:
                handler.setLevel(level)


class SearchFilter(logging.Filter):
    """Filter to only log search-related messages"""
    def filter(self, record):
        search_keywords = ['PROFILE', 'SEARCH', 'WITNESS', 'PRUNE']
        return any(keyword in record.getMessage().upper() for keyword in search_keywords)


def log_witness(logger, n, ratio, witness):
    """
    Log an optimal profile witness with consistent format

    Args:
        logger: Logger instance
        n: Size bound of the profile entry
        ratio: Exact boundary ratio (Fraction)
        witness: Sorted list of vertex encodings
    """
    shown = ' '.join(witness[:8])
    if len(witness) > 8:
        shown += ' ...'
    logger.info(f"WITNESS n={n} | j={ratio.numerator}/{ratio.denominator} | |A|={len(witness)} | {shown}")


def log_search_stats(logger, nodes, pruned, elapsed):
    """
    Log search statistics

    Args:
        logger: Logger instance
        nodes: Candidate sets visited
        pruned: Subtrees cut by the bound
        elapsed: Wall time in seconds
    """
    logger.info(f"SEARCH STATS | Nodes: {nodes:,} | Pruned: {pruned:,} | Elapsed: {elapsed:.2f}s")


def log_error_with_context(logger, error, context):
    """
    Log error with additional context

    Args:
        logger: Logger instance
        error: Exception object
        context: Dictionary with additional context
    """
    logger.error(f"ERROR: {str(error)}", exc_info=True, extra={'context': context})
