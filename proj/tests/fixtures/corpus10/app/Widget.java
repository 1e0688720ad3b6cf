package com.example.app;

import com.example.app.util.Logger;
import com.example.app.util.Config;
import com.example.core.TaskListener;

public class Widget implements Runnable {
    private final Logger logger = new Logger();
    private Config config;
    private TaskListener listener;

    public void run() {
        logger.toString();
    }
}
